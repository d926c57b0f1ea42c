/**
 * Strict reader for the experiment CSV schema emitted by the simulation
 * package. The header must match the schema exactly; booleans arrive as
 * "0"/"1" and inapplicable fields are empty.
 */

export const EXPERIMENT_COLUMNS = [
  "kind",
  "d",
  "n",
  "trial_index",
  "trial_seed",
  "T_converge",
  "period",
  "oscillating_fraction",
  "has_positive_core",
  "reached_internal_cut",
  "swap_steps",
  "k",
] as const;

export interface ExperimentRow {
  kind: string;
  d: string;
  n: number;
  trial_index: number;
  trial_seed: string;
  T_converge: number | null;
  period: number | null;
  oscillating_fraction: number | null;
  has_positive_core: boolean | null;
  reached_internal_cut: boolean | null;
  swap_steps: number | null;
  k: number | null;
}

function optionalNumber(field: string, value: string, line: number): number | null {
  if (value === "") return null;
  const parsed = Number(value);
  if (!Number.isFinite(parsed)) {
    throw new Error(`line ${line}: ${field} is not a number: ${JSON.stringify(value)}`);
  }
  return parsed;
}

function optionalBool(field: string, value: string, line: number): boolean | null {
  if (value === "") return null;
  if (value === "1") return true;
  if (value === "0") return false;
  throw new Error(`line ${line}: ${field} must be 0 or 1, got ${JSON.stringify(value)}`);
}

export function parseExperimentCsv(text: string): ExperimentRow[] {
  const lines = text.split(/\r?\n/);
  while (lines.length > 0 && lines[lines.length - 1].trim() === "") lines.pop();
  if (lines.length === 0) throw new Error("empty CSV");
  const header = lines[0].split(",");
  const expected = EXPERIMENT_COLUMNS as readonly string[];
  const missing = expected.filter((c) => !header.includes(c));
  if (missing.length > 0) {
    throw new Error(`missing columns: ${missing.join(", ")}`);
  }
  if (header.length !== expected.length || expected.some((c, i) => header[i] !== c)) {
    throw new Error(`header does not match the experiment schema: ${lines[0]}`);
  }
  const rows: ExperimentRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const fields = lines[i].split(",");
    if (fields.length !== expected.length) {
      throw new Error(`line ${i + 1}: expected ${expected.length} fields, got ${fields.length}`);
    }
    const n = Number(fields[2]);
    const trialIndex = Number(fields[3]);
    if (!Number.isInteger(n) || !Number.isInteger(trialIndex)) {
      throw new Error(`line ${i + 1}: bad n or trial_index`);
    }
    rows.push({
      kind: fields[0],
      d: fields[1],
      n,
      trial_index: trialIndex,
      trial_seed: fields[4],
      T_converge: optionalNumber("T_converge", fields[5], i + 1),
      period: optionalNumber("period", fields[6], i + 1),
      oscillating_fraction: optionalNumber("oscillating_fraction", fields[7], i + 1),
      has_positive_core: optionalBool("has_positive_core", fields[8], i + 1),
      reached_internal_cut: optionalBool("reached_internal_cut", fields[9], i + 1),
      swap_steps: optionalNumber("swap_steps", fields[10], i + 1),
      k: optionalNumber("k", fields[11], i + 1),
    });
  }
  return rows;
}

/** Value of a group-by column as it should appear in labels. */
export function columnValue(row: ExperimentRow, column: string): string {
  switch (column) {
    case "d":
      return row.d;
    case "n":
      return String(row.n);
    case "k":
      return row.k === null ? "" : String(row.k);
    case "kind":
      return row.kind;
    default:
      throw new Error(`unsupported group-by column: ${column}`);
  }
}

export function groupLabel(row: ExperimentRow, columns: string[]): string {
  return columns.map((c) => `${c}=${columnValue(row, c)}`).join(" ");
}
