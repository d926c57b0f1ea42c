/** Binning and interval helpers shared by the chart renderers. */

/** Fixed-range histogram over [0, 1]; values at 1 land in the last bin. */
export function histogramBins(values: number[], binCount = 100): number[] {
  if (binCount < 1) throw new Error("binCount must be positive");
  const bins = new Array<number>(binCount).fill(0);
  for (const v of values) {
    if (!(v >= 0 && v <= 1)) throw new Error(`value outside [0, 1]: ${v}`);
    bins[Math.min(binCount - 1, Math.floor(v * binCount))] += 1;
  }
  return bins;
}

/** Wilson score interval for a binomial proportion. */
export function wilson(successes: number, trials: number, z = 1.96): [number, number] {
  if (trials < 1) throw new Error("trials must be >= 1");
  const p = successes / trials;
  const zz = z * z;
  const denom = 1 + zz / trials;
  const center = (p + zz / (2 * trials)) / denom;
  const half = (z * Math.sqrt((p * (1 - p)) / trials + zz / (4 * trials * trials))) / denom;
  return [Math.max(0, center - half), Math.min(1, center + half)];
}

export function mean(xs: number[]): number {
  return xs.reduce((a, b) => a + b, 0) / (xs.length || 1);
}

/** Insertion-ordered grouping, so output order follows the CSV. */
export function groupBy<T>(items: T[], key: (item: T) => string): Map<string, T[]> {
  const groups = new Map<string, T[]>();
  for (const item of items) {
    const k = key(item);
    const bucket = groups.get(k);
    if (bucket) bucket.push(item);
    else groups.set(k, [item]);
  }
  return groups;
}
