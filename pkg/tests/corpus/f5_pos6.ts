import d, { n } from "./data.json" assert { type: "json" };
