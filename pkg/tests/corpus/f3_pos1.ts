interface Box<out T> {}
