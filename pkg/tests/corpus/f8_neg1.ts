type G = new () => C;
