a &&= b;
