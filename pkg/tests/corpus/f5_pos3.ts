import * as ns from "m" assert { type: "json" };
