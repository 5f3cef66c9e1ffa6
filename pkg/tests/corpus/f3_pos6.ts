type Setter<in T> = (value: T) => void;
