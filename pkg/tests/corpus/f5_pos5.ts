export { a } from "m" assert { t: "j" };
