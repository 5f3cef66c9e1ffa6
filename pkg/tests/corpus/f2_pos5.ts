type N<T> = T extends infer W extends keyof T ? W : never;
