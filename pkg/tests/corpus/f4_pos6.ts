import { type as } from "m";
