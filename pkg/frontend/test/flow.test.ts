/**
 * End-to-end form flow against the stubbed /v1 API in a DOM environment:
 * load, reject, re-enter, accept, submit, advance.
 */
import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { SurveyApp } from "../src/app.js";
import { accept, flushMicrotasks, jsonResponse, question, reject, StubApi } from "./helpers.js";

const STUDY = {
  study: { paste_restriction_enabled: true, search_check_enabled: true, quota: 10 },
  questions: [question("q1"), question("q2")],
};

function makeApp(stub: StubApi): { app: SurveyApp; root: HTMLElement } {
  const root = document.createElement("div");
  document.body.appendChild(root);
  const app = new SurveyApp(root, new ApiClient("", stub.fetch), "w1");
  return { app, root };
}

function field(root: HTMLElement): HTMLTextAreaElement {
  const node = root.querySelector("textarea.answer");
  if (!(node instanceof HTMLTextAreaElement)) throw new Error("answer field missing");
  return node;
}

function submitButton(root: HTMLElement): HTMLButtonElement {
  const node = root.querySelector("button.submit");
  if (!(node instanceof HTMLButtonElement)) throw new Error("submit button missing");
  return node;
}

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("survey flow", () => {
  it("renders the open questions after load", async () => {
    const stub = new StubApi(STUDY);
    const { app, root } = makeApp(stub);
    await app.start();
    expect(root.textContent).toContain("Prompt for q1");
    expect(root.textContent).toContain("Question 1 of 2");
  });

  it("shows a retry banner when the service is down", async () => {
    const api = new ApiClient("", async () => {
      throw new TypeError("refused");
    });
    const root = document.createElement("div");
    document.body.appendChild(root);
    const app = new SurveyApp(root, api, "w1");
    await app.start();
    expect(root.textContent).toContain("Could not reach the study server");
    expect(root.querySelector("button.retry")).not.toBeNull();
  });

  it("rejected draft shows the re-enter banner, corrected draft reaches submitted", async () => {
    const stub = new StubApi(STUDY);
    stub.script(
      "/v1/validate",
      { status: 200, body: reject("reject_copied", 1) },
      { status: 200, body: accept(1) },
    );
    stub.script("/v1/submit", { status: 201, body: { submission_id: "s", persisted_at: "t" } });
    const { app, root } = makeApp(stub);
    await app.start();

    field(root).value = "a copied answer";
    field(root).dispatchEvent(new Event("input"));
    submitButton(root).click();
    await flushMicrotasks();

    const banner = root.querySelector(".banner-reject");
    expect(banner).not.toBeNull();
    expect(banner!.textContent).toContain("re-enter");
    expect(root.textContent).toContain("Prompt for q1"); // still on q1

    field(root).value = "an original answer";
    field(root).dispatchEvent(new Event("input"));
    submitButton(root).click();
    await flushMicrotasks();

    // two validations, exactly one submit, then the next question renders
    const posts = stub.calls.filter((c) => c.path !== "/v1/questions").map((c) => c.path);
    expect(posts).toEqual(["/v1/validate", "/v1/validate", "/v1/submit"]);
    expect(root.textContent).toContain("Prompt for q2");
  });

  it("never renders shingle evidence, even if the payload carried extras", async () => {
    const stub = new StubApi(STUDY);
    stub.script("/v1/validate", {
      status: 200,
      body: {
        ...reject("reject_copied", 1),
        shared: [["stolen", "gram", "evidence"]],
      },
    });
    const { app, root } = makeApp(stub);
    await app.start();
    field(root).value = "whatever";
    field(root).dispatchEvent(new Event("input"));
    submitButton(root).click();
    await flushMicrotasks();
    expect(root.innerHTML).not.toContain("stolen");
    expect(root.innerHTML).not.toContain("gram");
  });

  it("paste notice appears when the restriction blocks a paste", async () => {
    const stub = new StubApi(STUDY);
    const { app, root } = makeApp(stub);
    await app.start();
    const event = new Event("paste", { bubbles: true, cancelable: true });
    field(root).dispatchEvent(event);
    expect(event.defaultPrevented).toBe(true);
    expect(root.textContent).toContain("Pasting is disabled");
  });

  it("paste is allowed when the study does not restrict it", async () => {
    const stub = new StubApi({
      ...STUDY,
      study: { ...STUDY.study, paste_restriction_enabled: false },
    });
    const { app, root } = makeApp(stub);
    await app.start();
    const event = new Event("paste", { bubbles: true, cancelable: true });
    field(root).dispatchEvent(event);
    expect(event.defaultPrevented).toBe(false);
  });

  it("locks the form while a validation is pending", async () => {
    const stub = new StubApi(STUDY);
    let release: (value: Response) => void = () => {};
    const gate = new Promise<Response>((resolve) => {
      release = resolve;
    });
    const api = new ApiClient("", async (input, init) => {
      const path = String(input);
      if (path.endsWith("/v1/questions")) return stub.fetch(input, init);
      return gate;
    });
    const root = document.createElement("div");
    document.body.appendChild(root);
    const app = new SurveyApp(root, api, "w1");
    await app.start();

    field(root).value = "slow answer";
    field(root).dispatchEvent(new Event("input"));
    submitButton(root).click();
    await flushMicrotasks();
    expect(field(root).disabled).toBe(true);
    expect(root.textContent).toContain("Checking");

    release(jsonResponse(200, reject("reject_gibberish", 1)));
    await flushMicrotasks();
    expect(field(root).disabled).toBe(false);
  });

  it("quota-exhausted questions render as complete when none remain open", async () => {
    const stub = new StubApi({
      ...STUDY,
      questions: [question("q1", { open: false, accepted: 10 })],
    });
    const { app, root } = makeApp(stub);
    await app.start();
    expect(root.textContent).toContain("No open questions");
    expect(root.querySelector("textarea")).toBeNull();
  });
});
