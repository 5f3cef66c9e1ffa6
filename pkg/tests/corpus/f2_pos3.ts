type U2<S> = S extends `${infer X extends string}` ? X : never;
