type M5 = { [K in keyof T]?: T[K] };
