interface Pair<in K, out V> {}
