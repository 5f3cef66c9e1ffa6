a = a || b;
