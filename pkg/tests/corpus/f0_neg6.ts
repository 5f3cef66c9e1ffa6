x.satisfies(y);
