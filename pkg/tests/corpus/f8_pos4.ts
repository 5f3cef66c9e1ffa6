declare const dc: abstract new () => {};
