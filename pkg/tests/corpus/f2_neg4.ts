type B<T> = T extends U ? 1 : 0;
