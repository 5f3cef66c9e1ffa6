function f(...args: [name: string, age?: number]) {}
