type Fn = (cb: [tag: string]) => void;
