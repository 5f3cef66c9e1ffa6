a = a ?? b;
