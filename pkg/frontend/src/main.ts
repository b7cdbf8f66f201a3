/** Browser bootstrap: session id in the URL hash, same-origin API. */

import { Api } from "./api.js";
import { App } from "./app.js";

export function boot(root: HTMLElement, baseUrl = ""): App {
  const api = new Api(baseUrl);
  const app = new App(root, api, (id) => {
    window.location.hash = id ? `#${id}` : "";
  });
  const fromHash = window.location.hash.replace(/^#/, "");
  if (fromHash) void app.openSession(fromHash);
  return app;
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  boot(document.getElementById("app") as HTMLElement);
}
