export const palette = { red: [255, 0, 0] } satisfies Palette;
