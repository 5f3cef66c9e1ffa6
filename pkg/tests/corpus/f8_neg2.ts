interface I { new (): C; }
