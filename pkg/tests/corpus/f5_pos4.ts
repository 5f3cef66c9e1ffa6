export * from "m" assert { t: "j" };
