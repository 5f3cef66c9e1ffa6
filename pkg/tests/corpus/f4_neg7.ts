export type { B };
