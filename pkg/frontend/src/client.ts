// Thin typed client for the diagram service. Every interaction with a
// diagram goes through here; the playground never rewrites PD text
// itself.

import type {
  ApplyResponse,
  CatalogResponse,
  ColoringCheck,
  EnumerateResponse,
  ErrorCode,
  ErrorEnvelope,
  HintResponse,
  InvariantsReport,
  MoveDirection,
  MoveKind,
  MoveSite,
  ParseReport,
  RenderOptions,
  RenderResponse,
  SessionWire,
  ValidateResponse,
} from "./wire.js";

export class ApiError extends Error {
  readonly code: ErrorCode;
  readonly detail: Record<string, unknown>;
  readonly status: number;

  constructor(
    code: ErrorCode,
    message: string,
    detail: Record<string, unknown> = {},
    status = 0,
  ) {
    super(message);
    this.name = "ApiError";
    this.code = code;
    this.detail = detail;
    this.status = status;
  }
}

function isEnvelope(body: unknown): body is ErrorEnvelope {
  return (
    typeof body === "object" &&
    body !== null &&
    typeof (body as ErrorEnvelope).error === "object" &&
    typeof (body as ErrorEnvelope).error?.code === "string"
  );
}

export class ServiceClient {
  constructor(readonly baseUrl: string) {}

  private async request<T>(
    method: "GET" | "POST",
    path: string,
    body?: unknown,
  ): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload: unknown = await response.json();
    if (!response.ok) {
      if (isEnvelope(payload)) {
        const { code, message, detail } = payload.error;
        throw new ApiError(code, message, detail ?? {}, response.status);
      }
      throw new ApiError(
        "STRUCTURE",
        `unexpected ${response.status} response`,
        { body: payload },
        response.status,
      );
    }
    return payload as T;
  }

  catalog(): Promise<CatalogResponse> {
    return this.request("GET", "/catalog");
  }

  parse(pd: string): Promise<ParseReport> {
    return this.request("POST", "/parse", { pd });
  }

  validate(pd: string): Promise<ValidateResponse> {
    return this.request("POST", "/validate", { pd });
  }

  invariants(pd: string, budget?: number): Promise<InvariantsReport> {
    return this.request(
      "POST",
      "/invariants",
      budget === undefined ? { pd } : { pd, budget },
    );
  }

  enumerateMoves(
    pd: string,
    kinds?: MoveKind[],
    directions?: MoveDirection[],
  ): Promise<EnumerateResponse> {
    return this.request("POST", "/moves/enumerate", { pd, kinds, directions });
  }

  applyMove(pd: string, site: MoveSite): Promise<ApplyResponse> {
    return this.request("POST", "/moves/apply", { pd, site });
  }

  checkColoring(
    pd: string,
    coloring: Record<number, number>,
  ): Promise<ColoringCheck> {
    return this.request("POST", "/coloring/check", { pd, coloring });
  }

  render(pd: string, options?: RenderOptions): Promise<RenderResponse> {
    return this.request("POST", "/render", { pd, options });
  }

  newPuzzle(
    base: string,
    n: number,
    seed: number,
    moveBudget?: number,
  ): Promise<SessionWire> {
    return this.request("POST", "/puzzle/new", {
      base,
      n,
      seed,
      move_budget: moveBudget,
    });
  }

  session(id: string): Promise<SessionWire> {
    return this.request("GET", `/session/${encodeURIComponent(id)}`);
  }

  sessionMove(id: string, site: MoveSite): Promise<SessionWire> {
    return this.request("POST", `/session/${encodeURIComponent(id)}/move`, {
      site,
    });
  }

  sessionReset(id: string): Promise<SessionWire> {
    return this.request("POST", `/session/${encodeURIComponent(id)}/reset`);
  }

  hint(id: string): Promise<HintResponse> {
    return this.request("GET", `/session/${encodeURIComponent(id)}/hint`);
  }
}
