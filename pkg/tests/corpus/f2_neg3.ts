type A<T> = T extends (infer U extends string ? 1 : 0) ? 2 : 3;
