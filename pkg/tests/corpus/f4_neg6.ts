import { type as foo } from "m";
