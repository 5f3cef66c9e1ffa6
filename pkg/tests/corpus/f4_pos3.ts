import x, { type A } from "m";
