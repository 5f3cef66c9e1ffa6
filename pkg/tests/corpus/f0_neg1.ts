let satisfies = 1; satisfies + 2;
