type T = abstract new () => C;
