const conf = { a: 1 } as const satisfies Record<string, number>;
