import { describe, expect, inject, it } from "vitest";

import { ApiError, ServiceClient } from "../src/client.js";

const TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const TRIPLE_KINK = "X(1,2,2,3) X(3,4,4,5) X(5,6,6,1)";

const client = new ServiceClient(inject("serviceUrl"));

describe("catalog", () => {
  it("lists the five built-in diagrams", async () => {
    const { entries } = await client.catalog();
    expect(entries.map((e) => e.name)).toEqual([
      "unknot",
      "trefoil",
      "figure_eight",
      "hopf",
      "solomon",
    ]);
    for (const entry of entries) {
      expect(entry.pd.length).toBeGreaterThan(0);
      expect(entry.preset_layout).not.toBeNull();
    }
  });
});

describe("invariants", () => {
  it("reports the trefoil values", async () => {
    const report = await client.invariants(TREFOIL);
    expect(report.writhe).toBe(3);
    expect(report.tricolor.count).toBe(9);
    expect(report.tricolor.tricolorable).toBe(true);
    expect(report.jones?.text).toBe("-t^4 + t^3 + t");
    expect(report.budget_exceeded).toBe(false);
  });

  it("keeps the cheap invariants when the bracket budget trips", async () => {
    const report = await client.invariants(TREFOIL, 2);
    expect(report.writhe).toBe(3);
    expect(report.jones).toBeNull();
    expect(report.budget_exceeded).toBe(true);
  });
});

describe("moves", () => {
  it("filters enumeration by direction", async () => {
    const reducers = await client.enumerateMoves(TREFOIL, undefined, [
      "reduce",
      "slide",
    ]);
    expect(reducers.count).toBe(0);
    const growers = await client.enumerateMoves(TREFOIL, undefined, ["grow"]);
    expect(growers.count).toBeGreaterThan(0);
  });

  it("applies a reduce site", async () => {
    const { sites } = await client.enumerateMoves(TRIPLE_KINK, undefined, [
      "reduce",
    ]);
    expect(sites.length).toBeGreaterThan(0);
    const applied = await client.applyMove(TRIPLE_KINK, sites[0]!);
    expect(applied.crossing_count).toBe(2);
  });
});

describe("errors", () => {
  it("surfaces syntax errors with the stable code", async () => {
    const err = await client.parse("not a pd").catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    const apiErr = err as ApiError;
    expect(apiErr.code).toBe("SYNTAX");
    expect(apiErr.status).toBe(400);
    expect(apiErr.detail).toEqual({ offset: 0 });
  });

  it("surfaces unknown sessions as NOT_FOUND", async () => {
    const err = await client.session("no-such-session").catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).code).toBe("NOT_FOUND");
    expect((err as ApiError).status).toBe(404);
  });

  it("surfaces stale sites as INVALID_SITE", async () => {
    const err = await client
      .applyMove(TREFOIL, {
        kind: "R1",
        direction: "reduce",
        locus: [0],
        params: {},
      })
      .catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).code).toBe("INVALID_SITE");
    expect((err as ApiError).status).toBe(409);
  });
});

describe("render", () => {
  it("returns svg and layout that agree with the diagram", async () => {
    const { svg, layout } = await client.render(TREFOIL);
    expect(svg).toContain('data-gaps="3"');
    expect(layout.positions).toHaveLength(3);
    expect(Object.keys(layout.edge_routes)).toHaveLength(6);
  });
});

describe("sessions", () => {
  it("creates, moves, resets, and hints", async () => {
    const fresh = await client.newPuzzle("unknot", 3, 7);
    expect(fresh.score.par).toBe(3);
    expect(fresh.completed).toBe(false);

    const hint = await client.hint(fresh.session_id);
    expect(hint.site).not.toBeNull();
    expect(hint.source).toBe("solution");

    const moved = await client.sessionMove(fresh.session_id, hint.site!);
    expect(moved.move_count).toBe(1);

    const back = await client.sessionReset(fresh.session_id);
    expect(back.move_count).toBe(0);
    expect(back.current).toBe(fresh.current);
  });
});
