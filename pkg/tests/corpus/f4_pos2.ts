import { type A, B } from "m";
