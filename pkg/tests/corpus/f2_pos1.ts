type A<T> = T extends infer U extends string ? U : never;
