export { type B };
