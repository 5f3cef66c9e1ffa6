import { type as as } from "m";
