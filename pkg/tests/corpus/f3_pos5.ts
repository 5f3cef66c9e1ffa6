const K = class<in T> {};
