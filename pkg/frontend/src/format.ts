/** Display formatting: fixed 4 decimals for the operator, full precision
 * preserved in the underlying state and exports. */

export function fmt4(value: number | null | undefined): string {
  if (value === null || value === undefined || !isFinite(value)) return "—";
  // avoid "-0.0000" for tiny negative values
  const v = Math.abs(value) < 5e-5 ? 0 : value;
  return v.toFixed(4);
}

export function fmtOutcome(y: 1 | -1): string {
  return y === 1 ? "success" : "failure";
}
