type H<E> = { [K in keyof E as `on${K & string}`]: (ev: E[K]) => void };
