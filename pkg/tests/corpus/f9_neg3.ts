let x9 = cond ? `a${b}` : c;
