export interface StudyFlags {
  paste_restriction_enabled: boolean;
  search_check_enabled: boolean;
  quota: number;
}

export interface Question {
  question_id: string;
  dsm_criterion: string;
  prompt: string;
  quota: number;
  accepted: number;
  open: boolean;
}

export interface StudyPayload {
  study: StudyFlags;
  questions: Question[];
}

export interface ResponsePayload {
  worker_id: string;
  question_id: string;
  session_id: string;
  text: string;
  elapsed_seconds: number;
}

export type Decision = "accept" | "reject_gibberish" | "reject_copied";

export interface ValidateResult {
  decision: Decision;
  message: string;
  attempts: number;
  for_review: boolean;
}

export interface SubmitReceipt {
  submission_id: string;
  persisted_at: string;
}
