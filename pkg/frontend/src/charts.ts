/**
 * Figure-style renderers: stacked histogram panels and probability curves
 * with Wilson error bars. Layout constants are fixed so output bytes are a
 * pure function of the input data.
 */

import { BLACK, GRAY, PALETTE, Raster, Rgb } from "./raster";

const BAR_FILL: Rgb = [31, 119, 180];

export interface HistogramPanel {
  label: string;
  bins: number[];
  count: number;
}

export interface CurvePoint {
  x: number;
  y: number;
  lo: number;
  hi: number;
  trials: number;
}

export interface Curve {
  label: string;
  points: CurvePoint[];
}

export interface CurveChartOptions {
  xLabel: string;
  yLabel: string;
  logX: boolean;
}

const WIDTH = 720;
const MARGIN_LEFT = 64;
const MARGIN_RIGHT = 24;
const PANEL_HEIGHT = 200;
const PANEL_TOP = 30;
const PANEL_BOTTOM = 36;

function formatTick(value: number): string {
  if (Number.isInteger(value)) return String(value);
  return value.toFixed(2).replace(/0+$/, "").replace(/\.$/, ".0");
}

/** One stacked panel per group; x axis fixed to [0, 1] over `bins.length` bins. */
export function renderHistogramPanels(panels: HistogramPanel[]): Raster {
  const panelFull = PANEL_TOP + PANEL_HEIGHT + PANEL_BOTTOM;
  const raster = new Raster(WIDTH, panelFull * panels.length);
  const plotW = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
  panels.forEach((panel, index) => {
    const top = index * panelFull + PANEL_TOP;
    const bottom = top + PANEL_HEIGHT;
    const maxCount = Math.max(1, ...panel.bins);
    raster.text(MARGIN_LEFT, index * panelFull + 10,
      `${panel.label}  trials=${panel.count}`, BLACK);
    // bars
    panel.bins.forEach((count, b) => {
      if (count === 0) return;
      const x0 = MARGIN_LEFT + (b / panel.bins.length) * plotW;
      const x1 = MARGIN_LEFT + ((b + 1) / panel.bins.length) * plotW;
      const h = (count / maxCount) * (PANEL_HEIGHT - 8);
      raster.fillRect(x0, bottom - h, Math.max(1, x1 - x0 - 1), h, BAR_FILL);
    });
    // axes
    raster.line(MARGIN_LEFT, top, MARGIN_LEFT, bottom, BLACK);
    raster.line(MARGIN_LEFT, bottom, WIDTH - MARGIN_RIGHT, bottom, BLACK);
    for (const t of [0, 0.25, 0.5, 0.75, 1]) {
      const x = MARGIN_LEFT + t * plotW;
      raster.line(x, bottom, x, bottom + 4, BLACK);
      const label = formatTick(t);
      raster.text(x - raster.textWidth(label) / 2, bottom + 8, label, BLACK);
    }
    const maxLabel = String(maxCount);
    raster.text(MARGIN_LEFT - raster.textWidth(maxLabel) - 6, top + 2, maxLabel, BLACK);
    raster.text(MARGIN_LEFT - raster.textWidth("0") - 6, bottom - 8, "0", BLACK);
  });
  return raster;
}

const CURVE_HEIGHT = 420;
const CURVE_TOP = 24;
const CURVE_BOTTOM = 48;
const LEGEND_WIDTH = 170;

function thinTicks(values: number[], maxTicks = 9): number[] {
  if (values.length <= maxTicks) return values;
  const step = Math.ceil(values.length / maxTicks);
  return values.filter((_, i) => i % step === 0 || i === values.length - 1);
}

/** Probability-vs-x chart: one colored series per curve, Wilson error bars. */
export function renderCurveChart(curves: Curve[], opts: CurveChartOptions): Raster {
  const raster = new Raster(WIDTH + LEGEND_WIDTH, CURVE_HEIGHT);
  const plotW = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
  const plotH = CURVE_HEIGHT - CURVE_TOP - CURVE_BOTTOM;
  const bottom = CURVE_TOP + plotH;

  const xsAll = curves.flatMap((c) => c.points.map((p) => p.x));
  const xMinRaw = Math.min(...xsAll);
  const xMaxRaw = Math.max(...xsAll);
  const toAxis = (x: number) => (opts.logX ? Math.log10(x) : x);
  const xMin = toAxis(xMinRaw);
  const xMax = toAxis(xMaxRaw);
  const span = xMax - xMin || 1;
  const px = (x: number) => MARGIN_LEFT + ((toAxis(x) - xMin) / span) * plotW;
  const py = (y: number) => bottom - y * plotH;

  // frame and y ticks (probability axis fixed to [0, 1])
  raster.line(MARGIN_LEFT, CURVE_TOP, MARGIN_LEFT, bottom, BLACK);
  raster.line(MARGIN_LEFT, bottom, MARGIN_LEFT + plotW, bottom, BLACK);
  for (const t of [0, 0.25, 0.5, 0.75, 1]) {
    const y = py(t);
    raster.line(MARGIN_LEFT - 4, y, MARGIN_LEFT, y, BLACK);
    raster.line(MARGIN_LEFT, y, MARGIN_LEFT + plotW, y, GRAY);
    const label = formatTick(t);
    raster.text(MARGIN_LEFT - raster.textWidth(label) - 8, y - 3, label, BLACK);
  }

  // x ticks at the distinct data positions (thinned when crowded)
  const distinctX = [...new Set(xsAll)].sort((a, b) => a - b);
  for (const x of thinTicks(distinctX)) {
    const xp = px(x);
    raster.line(xp, bottom, xp, bottom + 4, BLACK);
    const label = String(x);
    raster.text(xp - raster.textWidth(label) / 2, bottom + 8, label, BLACK);
  }
  raster.text(
    MARGIN_LEFT + plotW / 2 - raster.textWidth(opts.xLabel) / 2,
    bottom + 24,
    opts.xLabel,
    BLACK,
  );
  raster.text(MARGIN_LEFT, CURVE_TOP - 16, opts.yLabel, BLACK);

  curves.forEach((curve, index) => {
    const color = PALETTE[index % PALETTE.length];
    const pts = [...curve.points].sort((a, b) => a.x - b.x);
    for (let i = 1; i < pts.length; i++) {
      raster.line(px(pts[i - 1].x), py(pts[i - 1].y), px(pts[i].x), py(pts[i].y), color);
    }
    for (const p of pts) {
      const xp = px(p.x);
      raster.line(xp, py(p.lo), xp, py(p.hi), color);
      raster.line(xp - 3, py(p.lo), xp + 3, py(p.lo), color);
      raster.line(xp - 3, py(p.hi), xp + 3, py(p.hi), color);
      raster.marker(xp, py(p.y), color);
    }
    const ly = CURVE_TOP + 14 * index;
    raster.fillRect(WIDTH + 8, ly + 1, 10, 5, color);
    raster.text(WIDTH + 24, ly, curve.label, BLACK);
  });
  return raster;
}
