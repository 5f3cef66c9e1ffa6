type T = `a${B}`;
