import { type Parser } from "./parser";
export class Loader extends Base {
  static cache = new Map<string, `v${string}`>();
  override load(src: [path: string, data?: object]): void {
    this.state ??= {};
  }
}
