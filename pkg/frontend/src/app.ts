import { ApiClient } from "./api.js";
import { attachPasteGuard } from "./paste.js";
import { createSurvey, nextPending, QuestionSession, SurveyState } from "./state.js";

/**
 * Single-page survey form: one question at a time, inline verdict
 * banner, re-entry until the screen accepts. The DOM layer stays thin;
 * all sequencing lives in QuestionSession.
 */
export class SurveyApp {
  private state: SurveyState | null = null;
  private pasteNoticeShown = false;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly workerId: string,
  ) {}

  async start(): Promise<void> {
    this.root.innerHTML = `<p class="loading">Loading study…</p>`;
    let payload;
    try {
      payload = await this.api.loadStudy();
    } catch {
      this.root.innerHTML = "";
      const banner = el("div", "banner banner-error", "Could not reach the study server.");
      const retry = el("button", "retry", "Retry");
      retry.addEventListener("click", () => void this.start());
      banner.appendChild(retry);
      this.root.appendChild(banner);
      return;
    }
    this.state = createSurvey(payload.study, payload.questions, this.api, this.workerId);
    this.render();
  }

  private currentSession(): QuestionSession | null {
    if (!this.state) return null;
    const index = nextPending(this.state);
    if (index === -1) return null;
    this.state.current = index;
    return this.state.sessions[index] ?? null;
  }

  render(): void {
    if (!this.state) return;
    const state = this.state;
    this.root.innerHTML = "";

    if (state.sessions.length === 0) {
      this.root.appendChild(el("p", "empty", "No open questions right now."));
      return;
    }

    const session = this.currentSession();
    if (session === null) {
      const closed = state.sessions.filter((s) => !s.question.open).length;
      this.root.appendChild(
        el(
          "p",
          "done",
          closed === state.sessions.length
            ? "No open questions right now."
            : "All questions answered. Thank you!",
        ),
      );
      return;
    }

    const answered = state.sessions.filter((s) => s.phase === "submitted").length;
    this.root.appendChild(
      el(
        "p",
        "progress",
        `Question ${answered + 1} of ${state.sessions.filter((s) => s.question.open).length}`,
      ),
    );
    this.root.appendChild(el("h2", "prompt", session.question.prompt));

    if (session.banner) {
      const kind = session.phase === "rejected" ? "banner-reject" : "banner-error";
      const banner = el("div", `banner ${kind}`, session.banner);
      banner.setAttribute("role", "alert");
      this.root.appendChild(banner);
    }
    if (this.pasteNoticeShown) {
      this.root.appendChild(
        el("div", "banner banner-notice", "Pasting is disabled for this study. Please type your answer."),
      );
    }

    const field = document.createElement("textarea");
    field.className = "answer";
    field.value = session.draft;
    field.disabled = session.phase === "validating" || session.phase === "submitting";
    field.addEventListener("input", () => {
      this.pasteNoticeShown = false;
      session.edit(field.value);
    });
    attachPasteGuard(
      field,
      () => state.flags.paste_restriction_enabled,
      () => {
        this.pasteNoticeShown = true;
        this.render();
      },
    );
    this.root.appendChild(field);

    const button = el("button", "submit", "Submit answer") as HTMLButtonElement;
    button.disabled = field.disabled;
    button.addEventListener("click", () => {
      void this.submitCurrent(session, field);
    });
    this.root.appendChild(button);

    if (session.phase === "validating" || session.phase === "submitting") {
      this.root.appendChild(el("p", "pending", "Checking…"));
    }
    field.focus();
  }

  private async submitCurrent(session: QuestionSession, field: HTMLTextAreaElement): Promise<void> {
    session.edit(field.value);
    const pending = session.submitDraft();
    this.render();
    await pending;
    this.render();
  }
}

function el(tag: string, className: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function mount(root: HTMLElement, baseUrl = "", workerId?: string): SurveyApp {
  const params = new URLSearchParams(window.location.search);
  const worker = workerId ?? params.get("worker") ?? `anon-${Math.random().toString(36).slice(2, 8)}`;
  const app = new SurveyApp(root, new ApiClient(baseUrl), worker);
  void app.start();
  return app;
}

const autoRoot = typeof document !== "undefined" ? document.getElementById("survey-root") : null;
if (autoRoot instanceof HTMLElement) {
  mount(autoRoot);
}
