import { describe, expect, inject, it } from "vitest";

import { ServiceClient } from "../src/client.js";
import { PlaygroundController } from "../src/controller.js";
import type { MoveSite } from "../src/wire.js";

const client = new ServiceClient(inject("serviceUrl"));

const TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

function nonMonochromatic(colors: number[]): boolean {
  return new Set(colors).size > 1;
}

describe("load_view", () => {
  it("loads a catalog entry with rendering, invariants, and sites", async () => {
    const controller = new PlaygroundController(client);
    await controller.loadView("trefoil");
    const state = controller.state;
    expect(state.pd).toBe(TREFOIL);
    expect(state.svg).toContain('data-gaps="3"');
    expect(state.invariants?.tricolor.count).toBe(9);
    expect(state.report?.arc_count).toBe(3);
    expect(state.sites.length).toBeGreaterThan(0);
    expect(state.sites.every((s) => s.direction === "grow")).toBe(true);
    expect(state.toast).toBeNull();
  });

  it("toasts NOT_FOUND for an unknown source and keeps the old view", async () => {
    const controller = new PlaygroundController(client);
    await controller.loadView("unknot");
    const before = controller.state.pd;
    await controller.loadView("does-not-exist");
    expect(controller.state.toast?.code).toBe("NOT_FOUND");
    expect(controller.state.pd).toBe(before);
  });

  it("resumes an existing puzzle session by id", async () => {
    const made = await client.newPuzzle("trefoil", 2, 11);
    const controller = new PlaygroundController(client);
    await controller.loadView(made.session_id);
    expect(controller.state.mode).toBe("puzzle");
    expect(controller.state.session?.session_id).toBe(made.session_id);
    expect(controller.state.pd).toBe(made.current);
  });
});

describe("apply_site_interaction", () => {
  it("round-trips a transform through the service", async () => {
    const controller = new PlaygroundController(client);
    await controller.loadView("trefoil");
    const site = controller.state.sites[0]!;
    const versionBefore = controller.state.version;
    await controller.clickSite(site);
    const state = controller.state;
    expect(state.version).toBeGreaterThan(versionBefore);
    expect(state.report?.crossing_count).toBeGreaterThan(3);
    expect(state.svg).toContain(`data-gaps="${state.report?.crossing_count}"`);
    expect(state.invariants?.tricolor.count).toBe(9);
  });

  it("undoes a kink: R1 grow then R1 reduce returns to zero crossings", async () => {
    const controller = new PlaygroundController(client);
    await controller.loadView("unknot");
    expect(controller.state.report?.crossing_count).toBe(0);
    const grow = controller.state.sites.find(
      (s) => s.kind === "R1" && s.direction === "grow",
    );
    expect(grow).toBeDefined();
    await controller.clickSite(grow!);
    expect(controller.state.report?.crossing_count).toBe(1);
    const reduce = controller.state.sites.find((s) => s.direction === "reduce");
    expect(reduce?.kind).toBe("R1");
    await controller.clickSite(reduce!);
    expect(controller.state.report?.crossing_count).toBe(0);
    expect(controller.state.toast).toBeNull();
  });

  it("silently re-enumerates on a stale site", async () => {
    const controller = new PlaygroundController(client);
    await controller.loadView("trefoil");
    const stale: MoveSite = {
      kind: "R1",
      direction: "reduce",
      locus: [99],
      params: {},
    };
    await controller.clickSite(stale);
    expect(controller.state.toast).toBeNull();
    expect(controller.state.pd).toBe(TREFOIL);
    expect(controller.state.sites.length).toBeGreaterThan(0);
    expect(controller.state.pending).toBe(0);
  });

  it("queues clicks so transforms run one at a time, in order", async () => {
    const states: number[] = [];
    const controller = new PlaygroundController(client, (s) =>
      states.push(s.pending),
    );
    await controller.loadView("trefoil");
    const [a, b] = controller.state.sites;
    const first = controller.clickSite(a!);
    const second = controller.clickSite(b!);
    expect(controller.state.pending).toBe(2);
    await first;
    await second;
    expect(controller.state.pending).toBe(0);
    expect(Math.max(...states)).toBe(2);
    // the first grow always lands; whether the second applied or was
    // swallowed as stale, the sites must match the final diagram
    expect(controller.state.report?.crossing_count).toBeGreaterThanOrEqual(4);
    const fresh = await client.enumerateMoves(controller.state.pd);
    expect(controller.state.sites).toEqual(fresh.sites);
  });
});

describe("puzzle mode", () => {
  it("solves the seed-42 unknot scramble at par via hinted clicks", async () => {
    const controller = new PlaygroundController(client);
    await controller.newPuzzle("unknot", 5, 42);
    expect(controller.state.mode).toBe("puzzle");
    const par = controller.state.session!.score.par;
    expect(par).toBe(5);

    let guard = 0;
    while (!controller.state.session!.completed && guard < 20) {
      await controller.requestHint();
      const hinted = controller.state.hintSite;
      expect(hinted).not.toBeNull();
      await controller.clickSite(hinted!);
      guard += 1;
    }
    const score = controller.state.session!.score;
    expect(score.solved).toBe(true);
    expect(score.moves_used).toBe(par);
    expect(controller.state.banner).toBe(`Solved in ${par} moves (par ${par})`);
    expect(controller.state.report?.crossing_count).toBe(0);
  });

  it("reset returns to the scrambled start and clears the banner", async () => {
    const controller = new PlaygroundController(client);
    await controller.newPuzzle("unknot", 2, 3);
    const start = controller.state.pd;
    await controller.requestHint();
    await controller.clickSite(controller.state.hintSite!);
    expect(controller.state.session!.move_count).toBe(1);
    await controller.resetPuzzle();
    expect(controller.state.session!.move_count).toBe(0);
    expect(controller.state.pd).toBe(start);
    expect(controller.state.banner).toBeNull();
  });
});

describe("coloring_interaction", () => {
  it("accepts the 0/1/2 trefoil coloring", async () => {
    const controller = new PlaygroundController(client);
    await controller.loadView("trefoil");
    controller.setMode("coloring");
    expect(controller.state.coloringStatus).toEqual({
      state: "incomplete",
      missing: 3,
    });
    await controller.setArcColor(0, 0);
    await controller.setArcColor(1, 1);
    expect(controller.state.coloringStatus).toEqual({
      state: "incomplete",
      missing: 1,
    });
    await controller.setArcColor(2, 2);
    expect(controller.state.coloringStatus).toEqual({ state: "success" });
  });

  it("flags a monochromatic coloring instead of celebrating", async () => {
    const controller = new PlaygroundController(client);
    await controller.loadView("trefoil");
    controller.setMode("coloring");
    for (const arc of [0, 1, 2]) await controller.setArcColor(arc, 1);
    expect(controller.state.coloringStatus).toEqual({
      state: "monochromatic",
    });
  });

  it("rejects every full non-monochromatic figure-eight coloring", async () => {
    const controller = new PlaygroundController(client);
    await controller.loadView("figure_eight");
    controller.setMode("coloring");
    const arcCount = controller.state.report!.arc_count;
    expect(arcCount).toBe(4);

    let tried = 0;
    for (let code = 0; code < 3 ** arcCount; code++) {
      const colors = Array.from(
        { length: arcCount },
        (_, i) => Math.floor(code / 3 ** i) % 3,
      );
      if (!nonMonochromatic(colors)) continue;
      for (let arc = 0; arc < arcCount; arc++) {
        await controller.setArcColor(arc, colors[arc]!);
      }
      const status = controller.state.coloringStatus;
      expect(status.state).toBe("violations");
      if (status.state === "violations") {
        expect(status.crossings.length).toBeGreaterThan(0);
      }
      tried += 1;
    }
    expect(tried).toBe(3 ** 4 - 3);
  });
});
