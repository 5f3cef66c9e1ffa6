a = a && b;
