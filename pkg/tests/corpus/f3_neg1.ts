for (k in o) {}
