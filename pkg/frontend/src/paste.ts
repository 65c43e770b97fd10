/**
 * Best-effort clipboard restriction for the answer field. This only
 * raises the bar for casual copy-paste; the server-side search check is
 * the real integrity backstop.
 */
export interface PasteGuard {
  detach(): void;
}

export function attachPasteGuard(
  field: HTMLElement,
  isBlocked: () => boolean,
  onBlocked: () => void = () => {},
): PasteGuard {
  const cancel = (event: Event) => {
    if (!isBlocked()) {
      return;
    }
    event.preventDefault();
    onBlocked();
  };
  field.addEventListener("paste", cancel);
  field.addEventListener("drop", cancel);
  return {
    detach() {
      field.removeEventListener("paste", cancel);
      field.removeEventListener("drop", cancel);
    },
  };
}
