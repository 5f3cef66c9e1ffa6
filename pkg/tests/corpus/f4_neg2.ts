import type X from "m";
