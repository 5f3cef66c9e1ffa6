class Q<in out T> {}
