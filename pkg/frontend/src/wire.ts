// Types for the JSON wire protocol the playground speaks with the
// diagram service. Field names mirror the service responses exactly.

export type ErrorCode =
  | "SYNTAX"
  | "STRUCTURE"
  | "INVALID_SITE"
  | "BUDGET"
  | "NOT_FOUND";

export interface ErrorEnvelope {
  error: {
    code: ErrorCode;
    message: string;
    detail: Record<string, unknown>;
  };
}

export interface CatalogEntry {
  name: string;
  pd: string;
  crossing_count: number;
  component_count: number;
  notes: string;
  preset_layout: [number, number][] | null;
}

export interface CatalogResponse {
  entries: CatalogEntry[];
}

export interface ParseReport {
  pd: string;
  crossing_count: number;
  edge_count: number;
  free_loops: number;
  component_count: number;
  faces: number;
  arc_count: number;
  arc_of_edge: Record<string, number>;
  free_loop_arcs: number[];
  gauss_code: string;
}

export interface ValidateResponse {
  valid: boolean;
  findings: { code: string; message: string; labels: number[] }[];
}

export interface PolynomialWire {
  variable: "A" | "t";
  terms: { exp_quarters: number; coef: number }[];
  text: string;
}

export interface InvariantsReport {
  pd: string;
  crossing_count: number;
  component_count: number;
  writhe: number;
  signs: number[];
  tricolor: {
    count: number;
    tricolorable: boolean;
    witness: Record<string, number> | null;
  };
  linking: [number, number, number][];
  bracket: PolynomialWire | null;
  jones: PolynomialWire | null;
  budget_exceeded: boolean;
}

export type MoveKind = "R1" | "R2" | "R3";
export type MoveDirection = "reduce" | "grow" | "slide";

export interface MoveSite {
  kind: MoveKind;
  direction: MoveDirection;
  locus: number[];
  params: Record<string, unknown>;
}

export interface EnumerateResponse {
  count: number;
  sites: MoveSite[];
}

export interface ApplyResponse {
  pd: string;
  crossing_count: number;
  free_loops: number;
}

export interface ColoringCheck {
  valid: boolean;
  monochromatic: boolean;
  violations: number[];
}

export type Point = [number, number];

export interface LayoutWire {
  bbox: [number, number, number, number];
  positions: Point[];
  edge_routes: Record<string, Point[]>;
  free_loop_routes: Point[][];
}

export interface RenderResponse {
  svg: string;
  layout: LayoutWire;
}

export interface RenderOptions {
  gap_width?: number;
  stroke_width?: number;
  coloring?: Record<number, number>;
  show_labels?: boolean;
}

export interface PuzzleWire {
  id: string;
  seed: number;
  start: string;
  par: number;
  move_budget: number | null;
  target_crossings: number;
  target_diagram: string | null;
}

export interface SessionWire {
  session_id: string;
  puzzle: PuzzleWire;
  current: string;
  history: MoveSite[];
  move_count: number;
  completed: boolean;
  created_at: string;
  updated_at: string;
  score: { solved: boolean; moves_used: number; par: number };
}

export interface HintResponse {
  site: MoveSite | null;
  source: "solution" | "search" | null;
}

export interface EquivalenceResponse {
  outcome: "equivalent" | "distinguished" | "unknown";
  path: MoveSite[] | null;
  separating_invariant: {
    name: string;
    value_a: unknown;
    value_b: unknown;
  } | null;
  search_stats: { nodes_expanded: number; max_crossings_reached: number };
}
