import type { ResponsePayload, StudyPayload, SubmitReceipt, ValidateResult } from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function detail(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (body && typeof body.detail === "string") return body.detail;
  } catch {
    // fall through to the generic message
  }
  return `request failed with HTTP ${response.status}`;
}

/** Thin typed client for the /v1 validation API. */
export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  private async post<T>(path: string, body: unknown, okStatus: number): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (response.status !== okStatus) {
      throw new ApiError(response.status, await detail(response));
    }
    return (await response.json()) as T;
  }

  async loadStudy(): Promise<StudyPayload> {
    const response = await this.fetchFn(`${this.baseUrl}/v1/questions`);
    if (!response.ok) {
      throw new ApiError(response.status, await detail(response));
    }
    return (await response.json()) as StudyPayload;
  }

  validate(payload: ResponsePayload): Promise<ValidateResult> {
    return this.post<ValidateResult>("/v1/validate", payload, 200);
  }

  submit(payload: ResponsePayload): Promise<SubmitReceipt> {
    return this.post<SubmitReceipt>("/v1/submit", payload, 201);
  }
}
