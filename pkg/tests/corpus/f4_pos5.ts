export { type A as B } from "m";
