import type { Question, StudyPayload, ValidateResult } from "../src/types.js";

export function question(id: string, overrides: Partial<Question> = {}): Question {
  return {
    question_id: id,
    dsm_criterion: "A1",
    prompt: `Prompt for ${id}`,
    quota: 10,
    accepted: 0,
    open: true,
    ...overrides,
  };
}

export interface RecordedCall {
  path: string;
  body: Record<string, unknown> | null;
}

export interface StubRoute {
  status: number;
  body: unknown;
}

/**
 * Scripted stand-in for the /v1 API: each POST path pops the next
 * scripted response; GET /v1/questions always serves the study payload.
 */
export class StubApi {
  calls: RecordedCall[] = [];
  private scripts = new Map<string, StubRoute[]>();

  constructor(private study: StudyPayload) {}

  script(path: string, ...routes: StubRoute[]): void {
    const existing = this.scripts.get(path) ?? [];
    this.scripts.set(path, existing.concat(routes));
  }

  fetch = async (input: RequestInfo | URL, init?: RequestInit): Promise<Response> => {
    const url = String(input);
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    const body = init?.body ? (JSON.parse(String(init.body)) as Record<string, unknown>) : null;
    this.calls.push({ path, body });

    if (path.endsWith("/v1/questions")) {
      return jsonResponse(200, this.study);
    }
    const queue = this.scripts.get(path);
    const route = queue?.shift();
    if (!route) {
      return jsonResponse(500, { detail: `no scripted response for ${path}` });
    }
    return jsonResponse(route.status, route.body);
  };
}

export function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export function accept(attempts = 0): ValidateResult {
  return { decision: "accept", message: "Response accepted.", attempts, for_review: false };
}

export function reject(decision: "reject_gibberish" | "reject_copied", attempts: number): ValidateResult {
  return {
    decision,
    message:
      decision === "reject_copied"
        ? "Your response matches published text too closely. Please re-enter your response."
        : "Your response could not be recognized as coherent text. Please re-enter your response.",
    attempts,
    for_review: false,
  };
}

export function flushMicrotasks(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
