/** Software RGBA canvas with just enough drawing for chart rendering. */

import { GLYPH_HEIGHT, GLYPH_WIDTH, glyph } from "./font";
import { encodePng } from "./png";

export type Rgb = readonly [number, number, number];

export const BLACK: Rgb = [0, 0, 0];
export const WHITE: Rgb = [255, 255, 255];
export const GRAY: Rgb = [170, 170, 170];

/** Fixed series palette; index wraps. */
export const PALETTE: Rgb[] = [
  [31, 119, 180],
  [214, 39, 40],
  [44, 160, 44],
  [255, 127, 14],
  [148, 103, 189],
  [140, 86, 75],
];

export class Raster {
  readonly width: number;
  readonly height: number;
  readonly pixels: Uint8Array;

  constructor(width: number, height: number, background: Rgb = WHITE) {
    this.width = width;
    this.height = height;
    this.pixels = new Uint8Array(width * height * 4);
    for (let i = 0; i < width * height; i++) {
      this.pixels[i * 4] = background[0];
      this.pixels[i * 4 + 1] = background[1];
      this.pixels[i * 4 + 2] = background[2];
      this.pixels[i * 4 + 3] = 255;
    }
  }

  set(x: number, y: number, color: Rgb): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const i = (y * this.width + x) * 4;
    this.pixels[i] = color[0];
    this.pixels[i + 1] = color[1];
    this.pixels[i + 2] = color[2];
    this.pixels[i + 3] = 255;
  }

  fillRect(x: number, y: number, w: number, h: number, color: Rgb): void {
    const x0 = Math.max(0, Math.round(x));
    const y0 = Math.max(0, Math.round(y));
    const x1 = Math.min(this.width, Math.round(x + w));
    const y1 = Math.min(this.height, Math.round(y + h));
    for (let yy = y0; yy < y1; yy++) {
      for (let xx = x0; xx < x1; xx++) this.set(xx, yy, color);
    }
  }

  line(x0: number, y0: number, x1: number, y1: number, color: Rgb): void {
    let ax = Math.round(x0);
    let ay = Math.round(y0);
    const bx = Math.round(x1);
    const by = Math.round(y1);
    const dx = Math.abs(bx - ax);
    const dy = -Math.abs(by - ay);
    const sx = ax < bx ? 1 : -1;
    const sy = ay < by ? 1 : -1;
    let err = dx + dy;
    for (;;) {
      this.set(ax, ay, color);
      if (ax === bx && ay === by) break;
      const e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        ax += sx;
      }
      if (e2 <= dx) {
        err += dx;
        ay += sy;
      }
    }
  }

  /** Draw text with its top-left corner at (x, y). */
  text(x: number, y: number, s: string, color: Rgb = BLACK, scale = 1): void {
    let cx = Math.round(x);
    for (const ch of s) {
      const rows = glyph(ch);
      for (let ry = 0; ry < GLYPH_HEIGHT; ry++) {
        for (let rx = 0; rx < GLYPH_WIDTH; rx++) {
          if ((rows[ry] >> (GLYPH_WIDTH - 1 - rx)) & 1) {
            this.fillRect(cx + rx * scale, y + ry * scale, scale, scale, color);
          }
        }
      }
      cx += (GLYPH_WIDTH + 1) * scale;
    }
  }

  textWidth(s: string, scale = 1): number {
    return s.length === 0 ? 0 : (s.length * (GLYPH_WIDTH + 1) - 1) * scale;
  }

  marker(x: number, y: number, color: Rgb, radius = 2): void {
    this.fillRect(x - radius, y - radius, 2 * radius + 1, 2 * radius + 1, color);
  }

  toPng(): Buffer {
    return encodePng(this.width, this.height, this.pixels);
  }
}
