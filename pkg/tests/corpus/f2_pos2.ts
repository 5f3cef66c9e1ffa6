type B<T> = T extends [infer H extends number, ...infer R] ? H : 0;
