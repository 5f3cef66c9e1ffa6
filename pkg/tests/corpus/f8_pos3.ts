interface I2 { m(): abstract new () => C; }
