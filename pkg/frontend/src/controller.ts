// View state and the interaction loop. The controller owns a single
// ViewState snapshot and talks to the service for every diagram
// change: nothing here rewrites PD text, enumerates sites, or judges
// colorings locally. A version token stamps each diagram so responses
// that arrive after a newer transform are dropped, and transforms run
// through a queue so at most one is in flight at a time.

import { ApiError, ServiceClient } from "./client.js";
import type {
  ErrorCode,
  InvariantsReport,
  LayoutWire,
  MoveSite,
  ParseReport,
  SessionWire,
} from "./wire.js";

export type Mode = "explore" | "puzzle" | "coloring";

export type ColoringStatus =
  | { state: "idle" }
  | { state: "incomplete"; missing: number }
  | { state: "checking" }
  | { state: "success" }
  | { state: "monochromatic" }
  | { state: "violations"; crossings: number[] };

export interface Toast {
  code: ErrorCode | "NETWORK";
  message: string;
}

export interface ViewState {
  mode: Mode;
  source: string;
  pd: string;
  version: number;
  svg: string;
  layout: LayoutWire;
  report: ParseReport | null;
  invariants: InvariantsReport | null;
  sites: MoveSite[];
  colors: Record<number, number>;
  coloringStatus: ColoringStatus;
  session: SessionWire | null;
  hintSite: MoveSite | null;
  banner: string | null;
  toast: Toast | null;
  pending: number;
}

const EMPTY_LAYOUT: LayoutWire = {
  bbox: [0, 0, 0, 0],
  positions: [],
  edge_routes: {},
  free_loop_routes: [],
};

export function initialState(): ViewState {
  return {
    mode: "explore",
    source: "",
    pd: "",
    version: 0,
    svg: "",
    layout: EMPTY_LAYOUT,
    report: null,
    invariants: null,
    sites: [],
    colors: {},
    coloringStatus: { state: "idle" },
    session: null,
    hintSite: null,
    banner: null,
    toast: null,
    pending: 0,
  };
}

export function sameSite(a: MoveSite, b: MoveSite): boolean {
  return (
    a.kind === b.kind &&
    a.direction === b.direction &&
    a.locus.length === b.locus.length &&
    a.locus.every((v, i) => v === b.locus[i]) &&
    JSON.stringify(a.params) === JSON.stringify(b.params)
  );
}

export class PlaygroundController {
  state: ViewState = initialState();
  private queue: Promise<void> = Promise.resolve();

  constructor(
    private readonly client: ServiceClient,
    private readonly onChange: (state: ViewState) => void = () => {},
  ) {}

  private patch(partial: Partial<ViewState>): void {
    this.state = { ...this.state, ...partial };
    this.onChange(this.state);
  }

  private fail(err: unknown): void {
    if (err instanceof ApiError) {
      this.patch({ toast: { code: err.code, message: err.message } });
      return;
    }
    const message = err instanceof Error ? err.message : String(err);
    this.patch({ toast: { code: "NETWORK", message } });
  }

  private enqueue(run: () => Promise<void>): Promise<void> {
    this.queue = this.queue.catch(() => {}).then(run);
    return this.queue;
  }

  dismissToast(): void {
    this.patch({ toast: null });
  }

  /** Load a catalog entry by name, or resume a puzzle session by id. */
  async loadView(source: string): Promise<void> {
    try {
      const catalog = await this.client.catalog();
      const entry = catalog.entries.find((e) => e.name === source);
      if (entry) {
        this.patch({
          mode: this.state.mode === "coloring" ? "coloring" : "explore",
          source,
          session: null,
          banner: null,
          hintSite: null,
          toast: null,
          colors: {},
        });
        await this.setDiagram(entry.pd);
        return;
      }
      const session = await this.client.session(source);
      this.adoptSession(session);
      await this.setDiagram(session.current);
    } catch (err) {
      this.fail(err);
    }
  }

  /** Scramble a catalog entry into a fresh puzzle session. */
  async newPuzzle(
    base: string,
    n: number,
    seed: number,
    moveBudget?: number,
  ): Promise<void> {
    try {
      const session = await this.client.newPuzzle(base, n, seed, moveBudget);
      this.adoptSession(session);
      await this.setDiagram(session.current);
    } catch (err) {
      this.fail(err);
    }
  }

  private adoptSession(session: SessionWire): void {
    this.patch({
      mode: "puzzle",
      source: session.session_id,
      session,
      hintSite: null,
      toast: null,
      colors: {},
      coloringStatus: { state: "idle" },
      banner: session.completed
        ? `Solved in ${session.score.moves_used} moves (par ${session.score.par})`
        : null,
    });
  }

  /**
   * Swap in a new diagram and re-fetch everything derived from it.
   * Sites are cleared immediately so stale affordances cannot be
   * clicked while the new enumeration is in flight.
   */
  private async setDiagram(pd: string): Promise<void> {
    const version = this.state.version + 1;
    this.patch({
      pd,
      version,
      sites: [],
      hintSite: null,
      colors: {},
      coloringStatus: { state: "idle" },
    });
    await this.refresh(version);
  }

  private async refresh(version: number): Promise<void> {
    const pd = this.state.pd;
    const [render, report, invariants, moves] = await Promise.all([
      this.client.render(pd),
      this.client.parse(pd),
      this.client.invariants(pd),
      this.client.enumerateMoves(pd),
    ]);
    if (this.state.version !== version) return; // superseded by a newer transform
    this.patch({
      svg: render.svg,
      layout: render.layout,
      report,
      invariants,
      sites: moves.sites,
      coloringStatus:
        this.state.mode === "coloring"
          ? { state: "incomplete", missing: report.arc_count }
          : this.state.coloringStatus,
    });
  }

  /** Re-enumerate sites for the current diagram (stale click recovery). */
  private async reenumerate(): Promise<void> {
    const version = this.state.version;
    const moves = await this.client.enumerateMoves(this.state.pd);
    if (this.state.version !== version) return;
    this.patch({ sites: moves.sites, hintSite: null });
  }

  /**
   * Apply a clicked site. Transforms are queued: a click made while
   * another is in flight waits its turn and then runs against the
   * diagram that resulted from the earlier click.
   */
  clickSite(site: MoveSite): Promise<void> {
    this.patch({ pending: this.state.pending + 1 });
    const run = async (): Promise<void> => {
      try {
        if (this.state.mode === "puzzle" && this.state.session) {
          const session = await this.client.sessionMove(
            this.state.session.session_id,
            site,
          );
          this.adoptSession(session);
          await this.setDiagram(session.current);
        } else {
          const applied = await this.client.applyMove(this.state.pd, site);
          await this.setDiagram(applied.pd);
        }
      } catch (err) {
        if (err instanceof ApiError && err.code === "INVALID_SITE") {
          await this.reenumerate();
        } else {
          this.fail(err);
        }
      } finally {
        this.patch({ pending: this.state.pending - 1 });
      }
    };
    return this.enqueue(run);
  }

  setMode(mode: Mode): void {
    if (mode === this.state.mode) return;
    if (mode === "puzzle" && !this.state.session) return;
    this.patch({
      mode,
      colors: {},
      coloringStatus:
        mode === "coloring"
          ? { state: "incomplete", missing: this.state.report?.arc_count ?? 0 }
          : { state: "idle" },
      hintSite: null,
    });
  }

  /**
   * Color one arc. The recolor itself is local; once every arc has a
   * color the coloring is judged by the service.
   */
  async setArcColor(arc: number, color: number): Promise<void> {
    if (this.state.mode !== "coloring") return;
    const colors = { ...this.state.colors, [arc]: color };
    const arcCount = this.state.report?.arc_count ?? 0;
    const missing = arcCount - Object.keys(colors).length;
    if (missing > 0) {
      this.patch({ colors, coloringStatus: { state: "incomplete", missing } });
      return;
    }
    this.patch({ colors, coloringStatus: { state: "checking" } });
    const version = this.state.version;
    try {
      const check = await this.client.checkColoring(this.state.pd, colors);
      if (this.state.version !== version || this.state.colors !== colors) {
        return; // diagram or coloring moved on while the check ran
      }
      this.patch({
        coloringStatus: !check.valid
          ? { state: "violations", crossings: check.violations }
          : check.monochromatic
            ? { state: "monochromatic" }
            : { state: "success" },
      });
    } catch (err) {
      this.fail(err);
    }
  }

  async requestHint(): Promise<void> {
    const session = this.state.session;
    if (!session) return;
    const version = this.state.version;
    try {
      const hint = await this.client.hint(session.session_id);
      if (this.state.version !== version) return;
      this.patch({ hintSite: hint.site });
    } catch (err) {
      this.fail(err);
    }
  }

  resetPuzzle(): Promise<void> {
    const session = this.state.session;
    if (!session) return Promise.resolve();
    this.patch({ pending: this.state.pending + 1 });
    const run = async (): Promise<void> => {
      try {
        const fresh = await this.client.sessionReset(session.session_id);
        this.adoptSession(fresh);
        await this.setDiagram(fresh.current);
      } catch (err) {
        this.fail(err);
      } finally {
        this.patch({ pending: this.state.pending - 1 });
      }
    };
    return this.enqueue(run);
  }

  /** Settles when every queued transform has finished. */
  idle(): Promise<void> {
    return this.queue;
  }
}
