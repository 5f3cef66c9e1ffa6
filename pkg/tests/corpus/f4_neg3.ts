import type * as NS from "m";
