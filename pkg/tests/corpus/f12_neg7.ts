const tpl12 = `a ||= ${b}`;
