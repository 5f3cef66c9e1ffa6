let override = 1; override += 1;
