import { ApiClient, ApiError } from "./api.js";
import type { Question, StudyFlags, ValidateResult } from "./types.js";

/**
 * One question's answer lifecycle:
 *
 *   draft -> validating -> rejected -> draft (re-enter)
 *                       -> accepted -> submitting -> submitted
 *
 * Submission never skips validating: the server refuses to persist a
 * session without an accepted validation, and the client enforces the
 * same order. At most one request is in flight per question.
 */
export type Phase =
  | "draft"
  | "validating"
  | "rejected"
  | "accepted"
  | "submitting"
  | "submitted"
  | "failed";

export interface SessionOptions {
  clearDraftOnReject?: boolean;
  now?: () => number;
  makeSessionId?: () => string;
}

let sessionCounter = 0;

function defaultSessionId(): string {
  sessionCounter += 1;
  const random = Math.random().toString(36).slice(2, 10);
  return `ui-${Date.now().toString(36)}-${sessionCounter}-${random}`;
}

export class QuestionSession {
  readonly question: Question;
  phase: Phase = "draft";
  draft = "";
  banner = "";
  /** rejected validations so far; surfaced to the operator console only */
  attempts = 0;
  readonly phaseTrace: Phase[] = ["draft"];
  private readonly sessionId: string;
  private readonly startedAt: number;
  private readonly now: () => number;
  private readonly clearDraftOnReject: boolean;

  constructor(
    question: Question,
    private readonly api: ApiClient,
    private readonly workerId: string,
    options: SessionOptions = {},
  ) {
    this.question = question;
    this.now = options.now ?? (() => Date.now());
    this.clearDraftOnReject = options.clearDraftOnReject ?? false;
    this.sessionId = (options.makeSessionId ?? defaultSessionId)();
    this.startedAt = this.now();
  }

  private moveTo(phase: Phase): void {
    this.phase = phase;
    this.phaseTrace.push(phase);
  }

  edit(text: string): void {
    if (this.phase === "validating" || this.phase === "submitting") {
      return; // input is locked while a request is pending
    }
    this.draft = text;
    if (this.phase === "rejected") {
      this.moveTo("draft");
    }
  }

  /** Validate the draft and, on acceptance, persist it. */
  async submitDraft(): Promise<Phase> {
    if (this.phase === "validating" || this.phase === "submitting") {
      return this.phase;
    }
    if (this.phase === "submitted") {
      return this.phase;
    }
    if (!this.draft.trim()) {
      this.banner = "Please write an answer before submitting.";
      return this.phase;
    }

    const payload = {
      worker_id: this.workerId,
      question_id: this.question.question_id,
      session_id: this.sessionId,
      text: this.draft,
      elapsed_seconds: Math.max(0, (this.now() - this.startedAt) / 1000),
    };

    this.banner = "";
    this.moveTo("validating");
    let verdict: ValidateResult;
    try {
      verdict = await this.api.validate(payload);
    } catch (error) {
      this.banner =
        error instanceof ApiError
          ? error.message
          : "Could not reach the study server. Please try again.";
      this.moveTo(this.banner && error instanceof ApiError ? "failed" : "draft");
      return this.phase;
    }

    if (verdict.decision !== "accept") {
      this.attempts = verdict.attempts;
      this.banner = verdict.message;
      console.debug(
        `[operator] question ${this.question.question_id}: attempt ${verdict.attempts} rejected (${verdict.decision})`,
      );
      this.moveTo("rejected");
      if (this.clearDraftOnReject) {
        this.draft = "";
      }
      return this.phase;
    }

    this.attempts = verdict.attempts;
    this.moveTo("accepted");
    this.moveTo("submitting");
    try {
      await this.api.submit(payload);
    } catch (error) {
      this.banner =
        error instanceof ApiError
          ? error.message
          : "Saving failed. Please try again.";
      this.moveTo("failed");
      return this.phase;
    }
    this.banner = "";
    this.moveTo("submitted");
    return this.phase;
  }
}

export interface SurveyState {
  flags: StudyFlags;
  sessions: QuestionSession[];
  current: number;
}

export function createSurvey(
  flags: StudyFlags,
  questions: Question[],
  api: ApiClient,
  workerId: string,
  options: SessionOptions = {},
): SurveyState {
  const sessions = questions.map(
    (question) => new QuestionSession(question, api, workerId, options),
  );
  const firstOpen = questions.findIndex((q) => q.open);
  return { flags, sessions, current: firstOpen === -1 ? 0 : firstOpen };
}

/** Index of the next open, unanswered question; -1 when none remain. */
export function nextPending(state: SurveyState): number {
  for (let i = 0; i < state.sessions.length; i += 1) {
    const session = state.sessions[i]!;
    if (session.question.open && session.phase !== "submitted") {
      return i;
    }
  }
  return -1;
}
