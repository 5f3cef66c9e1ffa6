interface Plain<T> {}
