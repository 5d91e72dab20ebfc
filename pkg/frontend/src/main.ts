// Browser bootstrap. The service address comes from ?service=... so
// the static page can point at any running instance; the default
// matches `knotlab serve` on its default port.

import { PlaygroundApp } from "./app.js";
import { ServiceClient } from "./client.js";

const params = new URLSearchParams(window.location.search);
const baseUrl = params.get("service") ?? "http://127.0.0.1:8765";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app element");

const app = new PlaygroundApp(root, new ServiceClient(baseUrl));
app.start().catch((err) => {
  root.textContent = `Cannot reach the diagram service at ${baseUrl}: ${err}`;
});
