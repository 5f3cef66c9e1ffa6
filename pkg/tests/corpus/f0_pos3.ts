let q = a as B satisfies C;
