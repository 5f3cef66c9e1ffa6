type G<T> = T extends { a: infer V extends boolean } ? V : never;
