/* a &&= b */ let w12 = 1;
