import { describe, expect, it } from "vitest";

import { fmt4, fmtOutcome } from "../src/format.js";

describe("fmt4", () => {
  it("renders four fixed decimals", () => {
    expect(fmt4(0)).toBe("0.0000");
    expect(fmt4(-0.75)).toBe("-0.7500");
    expect(fmt4(0.375)).toBe("0.3750");
    expect(fmt4(-1 / 3)).toBe("-0.3333");
  });

  it("never shows a negative zero", () => {
    expect(fmt4(-1e-9)).toBe("0.0000");
  });

  it("handles missing values", () => {
    expect(fmt4(null)).toBe("—");
    expect(fmt4(undefined)).toBe("—");
    expect(fmt4(Number.NaN)).toBe("—");
  });
});

describe("fmtOutcome", () => {
  it("names both outcomes", () => {
    expect(fmtOutcome(1)).toBe("success");
    expect(fmtOutcome(-1)).toBe("failure");
  });
});
