type A<T> = infer U extends string ? 1 : 0;
