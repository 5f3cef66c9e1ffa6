import type { A } from "m";
