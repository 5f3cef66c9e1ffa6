import { type } from "m";
