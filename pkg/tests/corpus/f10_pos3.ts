type Q2 = { readonly [K in keyof T as Exclude<K, "a">]: T[K] };
